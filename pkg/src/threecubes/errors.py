"""Exception types raised across the package."""


class CubesError(Exception):
    """Base class for every error raised by threecubes."""


class ZeroInput(CubesError, ValueError):
    """An operation that needs a nonzero integer received 0."""


class ZeroProduct(ZeroInput):
    """ABC = 0 has infinitely many solutions and is rejected."""


class DomainError(CubesError, ValueError):
    """Argument outside the domain where the quantity is defined."""


class NotASolution(CubesError, ValueError):
    """The supplied triple does not satisfy x^3 + y^3 + z^3 = n."""


class InfiniteFamily(CubesError):
    """n = t^3: a single height carries infinitely many representations."""


class BoundTooLarge(CubesError, ValueError):
    pass


class LimitTooLarge(CubesError, ValueError):
    pass
