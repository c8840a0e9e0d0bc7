from .entities import GENERATORS, Binary, Call, Expr, Gen, Neg, Num, Pow, XRef
from .parser import Parser, parse_expr, tokenize
from .service import elaborate, evaluate, expand_qexp, print_expr, simplify
