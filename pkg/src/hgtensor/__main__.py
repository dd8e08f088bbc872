import sys

from hgtensor.cli import main

sys.exit(main())
