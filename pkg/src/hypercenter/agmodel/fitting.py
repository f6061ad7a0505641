"""Unipotent radical and Fitting subgroup of connected models."""

from __future__ import annotations

from fractions import Fraction

from ..errors import NotConnected, PreconditionViolated
from .center import center
from .model import AlgGroupModel, StdSubgroup, is_connected
from .quotient import quotient
from .series import nilpotency_class_sub


def rad_u(model: AlgGroupModel) -> StdSubgroup:
    """Largest unipotent normal subgroup of a connected model.

    Any unipotent normal subgroup maps to a unipotent subgroup of the
    multiplicative quotient D(X), which forces the image to be trivial.
    Hence the answer is all of U and nothing else: M = L, Y = X, K = 1.
    """
    if not is_connected(model):
        raise NotConnected("rad_u requires a connected group")
    d = model.lie.dim
    m = [
        [Fraction(1) if j == i else Fraction(0) for j in range(d)]
        for i in range(d)
    ]
    return StdSubgroup(model, m, model.x.full_subgroup(), model.f.trivial_subgroup())


def fitting(model: AlgGroupModel) -> StdSubgroup:
    """Largest nilpotent normal subgroup of a connected model.

    Take the central quotient q: G -> G/Z(G) and pull the unipotent
    radical of the quotient back through q.  The result is certified
    nilpotent before it is returned; failure of that check indicates a
    bug, not bad input.
    """
    if not is_connected(model):
        raise NotConnected("fitting requires a connected group")
    z = center(model)
    quot, proj = quotient(model, z)
    fit = proj.pull_std(rad_u(quot))
    if nilpotency_class_sub(model, fit) is None:
        raise PreconditionViolated("fitting candidate failed the nilpotency check")
    return fit
