"""Machine-checkable certificates for closed-geodesic multiplicity.

Two contradiction searches, both replaying a single-geodesic hypothesis
until it breaks:

* ``certify_theorem4``: on the projective plane, a lone non-contractible
  geodesic would need an index step function whose odd iterates perfectly
  match the equivariant Betti numbers; an exhaustive grid search shows the
  only candidate jumps at quarter turns, making its square degenerate -
  impossible for a bumpy metric, so two distinct geodesics exist.

* ``certify_theorem5``: on an odd space form with even-order h and
  nontrivial pi_1 of the equivariant loop space, the iterates of a lone
  minimal geodesic all have even index, so the handle decomposition could
  not carry the fundamental group.
"""

from loopspace import SpaceFormSpec, certify_theorem4, certify_theorem5, quarter_turn_function
from loopspace.bott import parity_remark_certificate
from loopspace.serialize import certificate_json, dumps


def main():
    cert = certify_theorem4(grid_denominator=60, value_bound=2, iterate_cutoff=121)
    print(f"projective-plane search on the 1/60 grid: {cert.verdict}")
    for s in cert.survivors:
        print(f"  survivor: jumps at {s['disc'][0]} and {s['disc'][1]}, outer value {s['arcs'][0]}")
    rejected = sum(1 for t in cert.transcript if t.get("matched") is False)
    print(f"  candidates rejected by Morse matching: {rejected}")
    print()

    spec = SpaceFormSpec(3, 8, 2)
    cert5 = certify_theorem5(spec, True, 1, quarter_turn_function(), 10)
    print(f"lens-space parity certificate (r = 8, ord h = 2): {cert5.verdict}")
    print(f"  pi_1 of the equivariant loop space has order {cert5.parameters['pi1_order']}")
    parities = [t["parity"] for t in cert5.transcript if "parity" in t]
    print(f"  parities of the relevant iterates: {parities}")
    print()

    remark = parity_remark_certificate(0, 1)
    print(f"parity remark for indices (0, 1): {remark.verdict}")
    print()

    print("full replayable JSON of the small search:")
    small = certify_theorem4(4, 1, 9)
    print(dumps(certificate_json(small)))


if __name__ == "__main__":
    main()
