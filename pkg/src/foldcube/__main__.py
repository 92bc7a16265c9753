import sys

from foldcube.cli import main

sys.exit(main())
