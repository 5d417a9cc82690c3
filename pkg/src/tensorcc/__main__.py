import sys

from tensorcc.cli import main

sys.exit(main())
