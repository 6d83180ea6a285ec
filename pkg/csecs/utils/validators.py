import math


def validate_coefficients(t, r, tol=1e-12):
    """
    Validates a superposition coefficient pair.
    Both must be real numbers in [0, 1] with t^2 + r^2 = 1 to within tol.
    """
    if not all(isinstance(value, (int, float)) for value in (t, r)):
        return False
    if not (0.0 <= t <= 1.0 and 0.0 <= r <= 1.0):
        return False
    return abs(t * t + r * r - 1.0) <= tol


def validate_order(order):
    """
    Validates an operation order (non-negative integer, bools rejected).
    """
    return isinstance(order, int) and not isinstance(order, bool) and order >= 0


def validate_grid_axis(start, stop, count):
    """
    Validates one sweep axis {start, stop, count}.
    """
    if not validate_order(count) or count < 1:
        return False
    if not (math.isfinite(start) and math.isfinite(stop)):
        return False
    return start <= stop


def validate_tolerance(tolerance):
    return isinstance(tolerance, (int, float)) and math.isfinite(tolerance) and tolerance > 0
