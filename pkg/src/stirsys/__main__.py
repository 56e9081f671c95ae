# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


import sys

from .cli import main


sys.exit(main())
