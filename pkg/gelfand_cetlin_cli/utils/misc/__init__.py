"""
Miscellaneous Utility Functions

Key Functions:
--------------
1. **timestamp**:
   - Generates a timestamp in ISO 8601 format, representing the current local
     time with timezone information. Used to name log files.

2. **elapsed_time_hms**:
   - Time elapsed since a start time, formatted as hh:mm:ss. Used in
     verification suite reports.

3. **parse_rational** / **to_fraction**:
   - Convert user input ("2", "-1/2", "0.25") or numbers into exact
     `fractions.Fraction` values.
"""

import time
import datetime
from fractions import Fraction
from numbers import Rational


def timestamp() -> str:
    """
    Helper to create an ISO 8601 formatted string that represents local time
    and includes the timezone info.
    """
    # Calculate the offset taking into account daylight saving time
    # https://stackoverflow.com/questions/2150739/iso-time-iso-8601-in-python
    if time.localtime().tm_isdst:
        utc_offset_sec = time.altzone
    else:
        utc_offset_sec = time.timezone
    utc_offset = datetime.timedelta(seconds=-utc_offset_sec)
    t = (
        datetime.datetime.now()
        .replace(tzinfo=datetime.timezone(offset=utc_offset))
        .isoformat()
    )

    return str(t)


def elapsed_time_hms(start_time: float) -> str:
    """
    Gets the time elapsed since `start_time` in hh:mm:ss string format.

    Args:
        start_time (float): epoch seconds, as returned by time.time()

    Returns:
        str: A time string formatted as hh:mm:ss.
    """
    elapsed = time.time() - start_time
    return time.strftime("%H:%M:%S", time.gmtime(elapsed))


def parse_rational(text: str) -> Fraction:
    """
    Parse an integer, "p/q" or finite decimal literal into a Fraction
    """
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"❌ Not a rational number: {text!r}") from e


def to_fraction(value) -> Fraction:
    """
    Exact conversion of ints, Fractions and numeric strings.

    Floats are converted through their shortest decimal repr, so 0.1 becomes
    1/10 rather than the binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    # sympy Rational and numpy integers expose p/q or int()
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    return Fraction(int(value))
