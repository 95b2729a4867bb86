"""
Top-level utilities module
"""

from gelfand_cetlin_cli.utils.misc import *
from gelfand_cetlin_cli.utils.io import *
