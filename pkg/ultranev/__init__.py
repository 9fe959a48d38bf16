from ultranev.errors import *
from ultranev.exactnum import *
from ultranev.algebra import *
from ultranev.series import *
from ultranev.nevanlinna import *
from ultranev.decomp import *

__version__ = '0.1.0'
