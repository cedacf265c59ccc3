'''Run the homhopf command line with python -m homhopf.'''

import sys

from .cli import main

sys.exit(main())
