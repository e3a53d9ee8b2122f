"""
Default value for options
"""


# Those are the flags shared by the command line and the config file
DEFAULTS_FLAG_IN_CONFIG = {
    "gamma": 0.1,
    "n": 30,
    "s_min": -8.0,
    "s_max": 8.0,
    "step": 0.02,
    "epsilon": None,
    "d": 3,
    "ell": 0,
    "k": "40",
    "z0": None,
    "t": None,
    "T": None,
    "tc": 1.0,
    "critical": False,
    "unfold": False,
    "scaling": "0",
    "zu_exponent": None,
    "deform_form": "real_part",
    "precision": None,
    "points": 512,
    "export_dir": None,
    "output": None,
    "format": "csv",
    "workers": 1,
    "only": None,
}
