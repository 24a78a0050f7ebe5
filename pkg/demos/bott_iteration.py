"""Bott index iteration with exact circle arithmetic.

The index of the m-th iterate of a closed geodesic is the sum of a step
function I over the m-th roots of unity.  With angles stored as exact
rational turns, arc membership of a root is decided exactly, so the whole
iteration theory is integer arithmetic.
"""

from fractions import Fraction

from loopspace import (
    BottFunction,
    bott_index,
    index_parity,
    is_nondegenerate,
    quarter_turn_function,
    schwarz_even,
)


def main():
    f = quarter_turn_function()
    print("step function with jumps at quarter turns:")
    print("  I = 0 on the arc through angle 0, I = 1 on the opposite arc")
    print()

    print("odd iterates (these are the non-contractible ones):")
    print("  m   :", " ".join(f"{m:>3}" for m in range(1, 22, 2)))
    print("  ind :", " ".join(f"{bott_index(f, m):>3}" for m in range(1, 22, 2)))
    print("the doubled pattern 0,2,2,4,4,... fills each even degree twice,")
    print("exactly the Betti numbers of Q[w,z]/(w^2) with deg w = deg z = 2.")
    print()

    print(f"degenerate at m = 2 (the jumps land on -1): {not is_nondegenerate(f, 2)}")
    print(f"contribution test for m = 7 (index difference even): {schwarz_even(f, 7)}")
    print()

    g = BottFunction.build((Fraction(1, 6), Fraction(5, 6)), (2, 1))
    print("another symmetric function, jumps at one-sixth turns, values 1|2:")
    for m in range(1, 11):
        print(
            f"  m = {m:>2}: ind = {bott_index(g, m):>2}, "
            f"parity = {'odd' if index_parity(g, m) else 'even'}, "
            f"nondegenerate = {is_nondegenerate(g, m)}"
        )


if __name__ == "__main__":
    main()
