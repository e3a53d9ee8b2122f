"""
This is the painleve-tau cli script
"""
import argparse
import json
import logging
import os
import sys
from importlib.metadata import PackageNotFoundError, version
from typing import Any, Optional

from painleve_tau.commands import COMMANDS, seed_figures
from painleve_tau.exceptions import PainleveTauError, as_library_error, exit_code_of
from painleve_tau.run_config import RunConfig
from painleve_tau.tauparser import DEFAULTS_FLAG_IN_CONFIG, tauparser
from painleve_tau.verify.battery import get_checks

logging.basicConfig()
LOGGER = logging.getLogger("PainleveTau")
LOGGER.setLevel(logging.INFO)


def _version() -> str:
    try:
        return version("painleve-tau")
    except PackageNotFoundError:
        # running from a source checkout
        return "unknown"


def parse_args(argv: Optional[list] = None) -> argparse.Namespace:
    """Parse the command line, then apply the config file to the flags left at their default

    Args:
        argv (Optional[list]): arguments, sys.argv[1:] when None

    Returns:
        argparse.Namespace: parsed arguments
    """
    parser = argparse.ArgumentParser(
        description="painleve-tau. Painleve IV tau function, orthogonal polynomials of the "
        "planar normal matrix model and their zeros",
        usage="painleve-tau {tau,zeros,curve,verify,extract} [flag]",
    )

    parser.add_argument(
        "--config-file",
        help="Provide a config file (default: painleve_tau.config.json)",
        action="store",
        dest="config_file",
        default="painleve_tau.config.json",
    )

    parser.add_argument(
        "--seed-figures",
        help="Regenerate every figure dataset with the pinned resolutions",
        action="store_true",
        dest="seed_figures",
        default=False,
    )

    parser.add_argument(
        "--version",
        help="Show the installed painleve-tau version",
        version=_version(),
        action="version",
    )

    parser.add_argument(
        "--list-checks",
        help="Shows the verification checks",
        action=ListChecks,
        nargs=0,
        default=False,
    )

    tauparser.init(parser)
    arguments = sys.argv[1:] if argv is None else argv
    if not arguments:
        parser.print_help(sys.stderr)
        sys.exit(1)

    args = parser.parse_args(arguments)

    # the config file only fills flags the user did not set
    if os.path.isfile(args.config_file):
        try:
            with open(args.config_file, encoding="utf8") as config_desc:
                config = json.load(config_desc)
                for key, elem in sorted(config.items()):
                    if key not in DEFAULTS_FLAG_IN_CONFIG:
                        LOGGER.info(
                            "Ignoring unknown key %s = %r in %s", key, elem, args.config_file
                        )
                        continue
                    # flags of other subcommands are absent from the namespace
                    if hasattr(args, key) and getattr(args, key) == DEFAULTS_FLAG_IN_CONFIG[key]:
                        setattr(args, key, elem)
        except json.decoder.JSONDecodeError as exception:
            LOGGER.error(
                "%s is not valid JSON (%s), using the command line values",
                args.config_file,
                exception,
            )

    return args


class ListChecks(argparse.Action):  # pylint: disable=too-few-public-methods
    """
    This class is used to print the verification checks to the log
    See --list-checks
    """

    def __call__(
        self,
        parser: argparse.ArgumentParser,
        args: Any,
        values: Any,
        option_string: Optional[str] = None,
    ) -> None:
        """Action performed

        Args:
            parser (argparse.ArgumentParser): argument parser
            args (Any):  not used
            values (Any): not used
            option_string (Optional[str], optional): not used. Defaults to None.
        """
        checks = get_checks()
        LOGGER.info(
            "\n"
            + "\n".join(
                [f"- {x.NAME}{' (slow)' if x.SLOW else ''}: {x.DESCRIPTION}" for x in checks]
            )
        )
        parser.exit()


def main(argv: Optional[list] = None) -> None:
    """Main function run from the cli

    Args:
        argv (Optional[list]): arguments, sys.argv[1:] when None
    """
    args = parse_args(argv)
    try:
        if args.seed_figures:
            generated = seed_figures()
        elif args.subcommand is None:
            LOGGER.error("A subcommand or --seed-figures is needed")
            sys.exit(2)
        else:
            config = RunConfig.from_args(args)
            generated = COMMANDS[config.subcommand](config)
        LOGGER.info("%d files written", len(generated))

    except (PainleveTauError, ArithmeticError) as raised:
        exception = as_library_error(raised)
        LOGGER.error(exception)
        sys.exit(exit_code_of(exception))


if __name__ == "__main__":
    main()
