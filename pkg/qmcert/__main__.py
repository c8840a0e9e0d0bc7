import sys

from qmcert.main import main

sys.exit(main())
