CAPG_NO_COLOR = "CAPG_NO_COLOR"
CAPG_IGNORE_ISATTY = "CAPG_IGNORE_ISATTY"
