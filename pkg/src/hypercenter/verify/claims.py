"""Registry of the structural claims the check suites exercise.

Each entry maps a stable claim id to a one-line statement about engine
behaviour.  Check results cite these ids, and a coverage test asserts
that every registered claim is cited by at least one check.
"""

CLAIMS: dict[str, str] = {
    "example-stage-tower": (
        "On the inversion fixture the i-th central stage is the kernel of "
        "the index-2^i lattice quotient for every finite i."
    ),
    "example-limit-torus": (
        "On the inversion fixture the first limit stage is the full torus, "
        "certified by a unit-factor split with terminal ordinal omega+1."
    ),
    "example-top-component": (
        "On the inversion fixture the limit stage of the quotient by the "
        "limit stage has order 2, unipotent exactly in characteristic 2."
    ),
    "example-not-nilpotent": (
        "The inversion fixture is not nilpotent: no finite stage exhausts it."
    ),
    "example-no-centerless-quotient": (
        "Quotients of the inversion fixture by its nilpotent normal "
        "subgroups all keep a nontrivial center."
    ),
    "unipotence-needs-connected": (
        "The limit stage of a quotient by a finite stage can fail to be "
        "unipotent when the component group is nontrivial."
    ),
    "center-standard": (
        "The computed center matches the weight-zero commuting space, the "
        "moved-character lattice, and the inert central component part, and "
        "agrees with the brute-force center through the finite bridge."
    ),
    "successor-stage": (
        "Each successor stage is the preimage of the center of the quotient "
        "by the previous stage."
    ),
    "series-terminates": (
        "The ascending central series of every supported model terminates "
        "at an ordinal below omega squared."
    ),
    "hypercenter-decomposition": (
        "Connected models split as a nilpotent hypercenter under a "
        "centerless quotient: the center above the terminal stage is "
        "trivial and the hypercenter has finite nilpotency class."
    ),
    "omega-stage-nilpotent": (
        "The first limit stage is a nilpotent normal subgroup of finite "
        "class."
    ),
    "omega-quotient-unipotent": (
        "For connected models the limit stage of the quotient by any "
        "positive finite stage is unipotent."
    ),
    "omega-top-unipotent": (
        "For connected models the limit stage of the quotient by the limit "
        "stage is unipotent."
    ),
    "split-center-quotient-unipotent": (
        "For connected models the limit stage of the quotient by the "
        "multiplicative part of the center is unipotent."
    ),
    "center-unipotent-forces-omega-unipotent": (
        "A connected model with unipotent center has a unipotent limit "
        "stage."
    ),
    "mult-normal-in-split-center": (
        "Multiplicative-type normal subgroups of a connected model lie in "
        "the multiplicative part of the center, and that part of the "
        "central quotient is trivial."
    ),
    "ordinal-bound": (
        "Terminated series report an ordinal below omega squared with at "
        "most rank X + dim L + 1 limit blocks; the corpus witnesses both a "
        "transfinite and a finite terminal ordinal of at least 2."
    ),
    "stage-identity": (
        "Stages past a limit ordinal are preimages of the stages of the "
        "quotient by the limit stage."
    ),
    "chain-union-realization": (
        "Ascending chains of standard subgroups have standard unions; the "
        "index-l^i towers union to the full torus."
    ),
    "chain-union-class-bound": (
        "The union of an ascending chain of subgroups of nilpotency class "
        "at most c has nilpotency class at most c."
    ),
    "chain-union-commutative": (
        "The union of an ascending chain of commutative subgroups is "
        "commutative."
    ),
    "hypercenter-intersection": (
        "On finite groups the hypercenter equals the intersection of all "
        "normal subgroups whose quotient is centerless."
    ),
    "hypercenter-functorial": (
        "Isomorphisms carry hypercenters to hypercenters: the finite bridge "
        "maps the model hypercenter onto the brute-force hypercenter."
    ),
    "fitting-largest": (
        "Every nilpotent normal subgroup is contained in the Fitting "
        "subgroup."
    ),
    "fitting-construction": (
        "The Fitting subgroup of a connected model is the preimage of the "
        "unipotent radical of the central quotient, and is nilpotent."
    ),
    "trigonalizable-class-bound": (
        "Fixtures with a declared faithful matrix dimension d have all "
        "computed nilpotency classes at most d(d-1)/2 + 1."
    ),
    "stabilization-index": (
        "The terminal ordinal is the first index at which the series "
        "stabilizes: the stage there equals the hypercenter and the "
        "preceding stage differs."
    ),
}
