import sys

from bettigraph.cli import main

sys.exit(main())
