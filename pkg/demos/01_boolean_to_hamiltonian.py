"""From Boolean formulas to diagonal Hamiltonians.

Every Boolean function f on n bits has a unique n-qubit diagonal operator
H with H|x> = f(x)|x>, written as a real combination of Z-products whose
coefficients are the function's Fourier coefficients.  The compiler builds
that operator directly from the formula structure, never touching a truth
table.
"""

import boolham as bh

print("== Basic clauses ==")
for text in ["x1", "!x1", "x1 & x2", "x1 | x2", "x1 ^ x2", "x1 => x2"]:
    h = bh.compile_expr(bh.parse_expr(text))
    print(f"{text:>10}  ->  {h.to_text()}")

print()
print("== Three-variable favourites ==")
maj = bh.compile_expr(bh.parse_expr("(x1 & x2) | (x1 & x3) | (x2 & x3)"))
nae = bh.compile_expr(bh.parse_expr("(x1 | x2 | x3) & (!x1 | !x2 | !x3)"))
print("MAJ :", maj.to_text())
print("NAE :", nae.to_text())
print("degree", maj.degree, "size", maj.size)

print()
print("== The operator really multiplies by f(x) ==")
for x in ["000", "110", "111"]:
    print(f"MAJ eval({x}) = {maj.eval(x):g}")

print()
print("== Identity coefficient = fraction of satisfying inputs ==")
print("NAE identity coefficient:", nae.identity_coeff)
print("NAE model count:", bh.count_models(nae), "of 8 inputs")

unsat = bh.compile_expr(bh.parse_expr("x1 & !x1"), 1)
print("unsatisfiable formula compiles to the zero operator, size =", unsat.size)
