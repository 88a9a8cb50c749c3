# Digit sets for rational bases a/b and the three-state carry automaton
# that adds or subtracts b.

from fractions import Fraction

from algdigits import (build_transducer, digit_set_rational, expand_int,
                       value_of, verify_digit_properties)

# ----------------------------------------------------------------------
# The three regimes

for a, b in [(3, -2), (5, 2), (3, 2)]:
    ds = digit_set_rational(a, b)
    print(f"a/b = {a}/{b}: regime {ds.regime.value}, digits {ds.digits}")

# positive b shifts some canonical digits by a; the shifted set B
ds52 = digit_set_rational(5, 2)
print("shifted multiples B for 5/2:", ds52.shifted)
print("structural properties:", verify_digit_properties(ds52))

# ----------------------------------------------------------------------
# Every integer expands finitely; the value comes back exactly

print()
for k in (7, -7, 19):
    word = expand_int(ds52, k)
    print(f"{k:4d} = {word} in base 5/2 "
          f"(check: {value_of(word, Fraction(5, 2))})")

# the redundant regime b = a - 1 needs the symmetric 5-digit set
ds32 = digit_set_rational(3, 2)
for k in (4, -4):
    word = expand_int(ds32, k)
    assert value_of(word, Fraction(3, 2)) == k
    print(f"{k:4d} = {word} in base 3/2")

# ----------------------------------------------------------------------
# Adding b is a 3-state transduction; the carry flushes in <= 2 steps

trans = build_transducer(ds52)
print("\ncarry states:", trans.states)
word = expand_int(ds52, 7)
plus = trans.transduce(word)            # value + b
minus = trans.transduce(word, subtract=True)
print(f"7 = {word}; +2 -> {plus} = {value_of(plus, ds52.alpha)}; "
      f"-2 -> {minus} = {value_of(minus, ds52.alpha)}")

print("\ntransition table (carry, in, out, carry'):")
for row in build_transducer(digit_set_rational(3, -2)).transitions():
    print("  ", row)
