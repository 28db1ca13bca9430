from __future__ import annotations


class CoringLabError(Exception):
    """Base class; ``witness`` carries a concrete counterexample when one exists."""

    def __init__(self, message: str = "", witness=None):
        super().__init__(message)
        self.witness = witness


class NotPrime(CoringLabError):
    pass


class NotAssociative(CoringLabError):
    pass


class NotARepresentation(CoringLabError):
    pass


class NoUnit(NotARepresentation):
    pass


class NotAUnit(CoringLabError):
    pass


class TooLarge(CoringLabError):
    pass


class NotAGroup(CoringLabError):
    pass


class NotAnAutomorphism(CoringLabError):
    pass


class NotAnAction(CoringLabError):
    pass


class ActionsDoNotCommute(CoringLabError):
    pass


class NotBilinear(CoringLabError):
    pass


class NotCoassociative(CoringLabError):
    pass


class CounitFails(CoringLabError):
    pass


class NotGalois(CoringLabError):
    pass


class NotACocycle(CoringLabError):
    pass


class NotAGrouplike(CoringLabError):
    pass


class NotAHopfAlgebra(CoringLabError):
    pass


class NotAComoduleAlgebra(CoringLabError):
    pass


class ParseError(CoringLabError):
    pass


class ValidationError(CoringLabError):
    """An instance file is malformed; ``pointer`` locates the offending entry."""

    def __init__(self, message: str = "", pointer: str = "", witness=None):
        super().__init__(f"{pointer}: {message}" if pointer else message, witness)
        self.pointer = pointer


class UnknownTask(CoringLabError):
    pass
