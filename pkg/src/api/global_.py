#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim:ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Copyleft (K), EPH geometry kernel contributors
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------
from typing import Dict, Set

# ----------------------------------------------------------------------
# Simple global container for internal constants.
#
# Don't touch unless you know what are you doing
# ----------------------------------------------------------------------

# ----------------------------------------------------------------------
# Number of errors and warnings emitted during the current command.
# ----------------------------------------------------------------------
has_errors = 0  # Number of errors
has_warnings = 0  # Number of warnings

# ----------------------------------------------------------------------
# Default number of trials per (check, sign combination) in verify
# ----------------------------------------------------------------------
DEFAULT_TRIALS = 100

# ----------------------------------------------------------------------
# Default seed for the verify suite (EPH_SEED overrides it)
# ----------------------------------------------------------------------
DEFAULT_SEED = 1
SEED_ENV_VAR = "EPH_SEED"

# ----------------------------------------------------------------------
# Default sampling density for figure cycles
# ----------------------------------------------------------------------
DEFAULT_SAMPLES = 512
MIN_SAMPLES = 8

# ----------------------------------------------------------------------
# Float backend tolerances
# ----------------------------------------------------------------------
FLOAT_ATOL = 1e-9
FLOAT_RTOL = 1e-9

# ----------------------------------------------------------------------
# Service time limit for a single request (seconds)
# ----------------------------------------------------------------------
SERVICE_TIMEOUT = 30

# ----------------------------------------------------------------------
# Cache of Message errors to avoid repetition
# ----------------------------------------------------------------------
error_msg_cache: Set[str] = set()


# ----------------------------------------------------------------------
# Warning options
# ----------------------------------------------------------------------

# Warning codes and whether they're enabled or not
ENABLED_WARNINGS: Dict[str, bool] = {}
