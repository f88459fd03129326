#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# vim: ts=4:sw=4:et:

import sys

from src import eph

if __name__ == "__main__":
    sys.exit(eph.main())  # Exit
