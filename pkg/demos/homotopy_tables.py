"""Rational homotopy tables for loop spaces of spherical space forms.

For M = S^n/Gamma and a nontrivial free homotopy class h, the component
Lambda(M)[h] of the free loop space has rational homotopy concentrated in
two consecutive degrees, and its fundamental group is the (finite cyclic)
centralizer of h.  Passing to the SO(2) homotopy quotient adds one class
in degree 2 and divides the fundamental group by <h>.
"""

from loopspace import SpaceFormSpec, theorem1_table, theorem2_table


def describe(table):
    parts = [f"pi_{d} = Q" + (f"^{v}" if v > 1 else "") for d, v in table.dims]
    pi1 = "0" if table.pi1 == 1 else f"Z_{table.pi1}"
    return ", ".join(parts) + f", pi_1 = {pi1}"


def main():
    print("free-loop components Lambda(M)[h]")
    print("=" * 60)
    for n in range(2, 10):
        orders = (2,) if n % 2 == 0 else (2, 4, 8)
        for r in orders:
            spec = SpaceFormSpec(n, r, 2)
            print(f"S^{n}/Gamma, |C(h)| = {r}:  {describe(theorem1_table(spec, 2 * n + 2))}")

    print()
    print("SO(2) homotopy quotients")
    print("=" * 60)
    # the extra degree-2 class comes from the circle fibration over the quotient
    for spec in (SpaceFormSpec(2, 2), SpaceFormSpec(3, 8, 2), SpaceFormSpec(3, 8, 4), SpaceFormSpec(5, 4, 2)):
        table = theorem2_table(spec, 2 * spec.n + 2)
        print(f"S^{spec.n}/Gamma, r = {spec.r}, ord(h) = {spec.element_order}:  {describe(table)}")

    print()
    print("the projective plane is special: pi_1(Lambda RP^2[h]) = Z_4,")
    print("an order-4 extension rather than the split Z_2 x Z_2.")


if __name__ == "__main__":
    main()
