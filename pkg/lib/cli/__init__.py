from lib.cli.functions import *
from lib.cli.QmcCLI import QmcCLI
