"""Small builders used across test modules."""
from mixed_matroids.signed import GroundSet, SignedSet


def ss(ground: GroundSet, **signs: int) -> SignedSet:
    """Signed set from keyword signs, e.g. ``ss(g, d=1, e=-1)``."""
    return SignedSet.from_signs({ground.position(k.replace("_", "'")): v for k, v in signs.items()})


def sd(ground: GroundSet, plus=(), minus=()) -> SignedSet:
    return SignedSet(ground.mask(list(plus)), ground.mask(list(minus)))
