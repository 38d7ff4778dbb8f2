import sys

from linefit3d.cli import main

sys.exit(main())
