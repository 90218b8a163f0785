#!/usr/bin/env python3
# The free differential calculus on a finite set: basis words, products,
# the differential, and the scalar product.  Everything is exact.

from finitary import (
    Form,
    Word,
    basis_words,
    bimodule_action,
    differential,
    differential_word,
    form_product,
    inner,
    unit,
    word_product,
)

n = 3  # three vertices, indexed 0, 1, 2

# grade-r basis words are vertex sequences of length r+1 with no equal
# adjacent letters; there are n*(n-1)^r of them
for r in range(3):
    words = list(basis_words(n, r))
    print(f"grade {r}: {len(words)} words:", ", ".join(map(repr, words)))

# the overlap product concatenates when the junction letters match
print()
print("e(0,1) * e(1,2) =", word_product(Word((0, 1)), Word((1, 2))))
print("e(0,1) * e(0,2) =", word_product(Word((0, 1)), Word((0, 2))))

# grade-0 idempotents act on both sides; their sum is the identity
w = Word((0, 1))
print("e_0 . e(0,1) . e_1 =", bimodule_action(0, w, 1))
print("unit * e(0,1)     =", form_product(unit(n), Form.word(w)))

# the differential inserts a letter into every gap with alternating signs
f = Form.word((0,))
df = differential(f, n)
print()
print("d e(0)  =", df)
print("d d e(0) =", differential(df, n), " (always zero)")

# graded Leibniz rule: d(a*b) = (da)*b + (-1)^grade(a) a*(db)
a, b = Word((0, 1)), Word((1, 2))
lhs = differential(word_product(a, b), n)
rhs = form_product(differential_word(a, n), Form.word(b)) - form_product(
    Form.word(a), differential_word(b, n)
)
print()
print("d(a*b)              =", lhs)
print("(da)*b - a*(db)     =", rhs)
assert lhs == rhs

# basis words are orthonormal; the product is conjugate-linear on the left
print()
print("(e(0,1), e(0,1)) =", inner(Form.word((0, 1)), Form.word((0, 1))))
print("(e(0,1), e(1,0)) =", inner(Form.word((0, 1)), Form.word((1, 0))))
