import sys

from profinito.main import main

sys.exit(main())
