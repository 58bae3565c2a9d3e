"""The expression language and tabulated output.

Run with:  python demos/04_expression_language.py

Solution recipes travel as plain text: a weighted sum of base members plus
an optional pipeline of group elements. The same recipes drive the bachsym
command line (eval, table, verify, transform).
"""

from bachelier_symmetries import (
    GridSpec,
    ModelParams,
    expression_function,
    format_expr,
    parse_expr,
)
from bachelier_symmetries.errors import ParseError, SemanticError

params = ModelParams(r=0.05, sigma=0.2)

text = "2*C1[0] + 5*C1[-2] + C2[0] + 3*C2[-2] + 4*C3[0] + 6*C3[-2] + 7*C4[0] + 9*C4[-2] | G3(0.1)"
expr = parse_expr(text)
print("Parsed recipe:")
print(f"  {len(expr.combo.terms)} terms, pipeline {[f'G{g.gen_index}' for g in expr.pipeline]}")
print(f"  canonical form: {format_expr(expr)}\n")

f = expression_function(expr, params)
print("Values at a few points:")
for t, s in ((0.0, 0.0), (0.5, 1.0), (0.5, -1.0)):
    print(f"  C({t}, {s:+}) = {f(t, s):.10f}")

print("\nSmall CSV surface (t outer, S inner), as `bachsym table` would emit:")
grid = GridSpec(t_range=(0.0, 1.0), S_range=(-1.0, 1.0), nt=3, nS=3)
print("t,S,C")
for t in grid.t_points():
    for s in grid.S_points():
        print(f"{t!r},{s!r},{f(t, s)!r}")

print("\nMalformed input never crashes; errors carry byte offsets:")
for bad in ("C1[0] + |", "C9[0]", "C1[1]"):
    try:
        parse_expr(bad)
    except ParseError as err:
        print(f"  {bad!r}: syntax error at offset {err.offset}, expected {' or '.join(err.expected)}")
    except SemanticError as err:
        print(f"  {bad!r}: semantic error at offset {err.offset}: {err.reason}")
