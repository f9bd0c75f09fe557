print('tests/__init__.py')

from .test_errors import *
from .test_log import *
from .test_verdict import *
from .test_preorder import *
from .test_core import *
from .test_order import *
from .test_monotones import *
from .test_dump_table import *
from .test_translate import *
from .test_dist import *
from .test_convex import *
from .test_inform import *
from .test_gen import *
from .test_harness import *
from .test_cli import *
