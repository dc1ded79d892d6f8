import sys

from ffdistlab.harness.cli import main

sys.exit(main())
