"""Run the CLI as ``python -m ginhole``."""

import sys

from ginhole.cli import main

sys.exit(main())
