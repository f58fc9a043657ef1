import sys

from gencol.cli import main

sys.exit(main())
