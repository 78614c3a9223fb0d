"""Input validation helpers in the spirit of ``sklearn.utils.validation``."""
from sklearn.utils.validation import check_is_fitted  # noqa: F401  re-export

from .numkit import as_array, infer_arithmetic


def check_vector(x, arithmetic=None, length=None, name="vector"):
    """Validate a 1-d numeric vector and convert it to ``arithmetic``.

    Raises
    ------
    ValueError
        If ``x`` is not 1-d, is empty, or has the wrong length.
    """
    if arithmetic is None:
        arithmetic = infer_arithmetic(x)
    try:
        out = as_array(x, arithmetic)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{name}: non-numeric entry ({exc})") from None
    if out.ndim != 1:
        raise ValueError(f"{name} must be 1-d, got shape {out.shape}")
    if out.shape[0] == 0:
        raise ValueError(f"{name} must be non-empty")
    if length is not None and out.shape[0] != length:
        raise ValueError(f"{name} has length {out.shape[0]}, expected {length}")
    return out


def check_matrix(A, arithmetic=None, shape=None, name="matrix",
                 allow_empty_cols=False):
    if arithmetic is None:
        arithmetic = infer_arithmetic(A)
    try:
        out = as_array(A, arithmetic)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{name}: non-numeric entry ({exc})") from None
    if out.ndim != 2:
        raise ValueError(f"{name} must be 2-d, got shape {out.shape}")
    if out.shape[0] == 0 or (out.shape[1] == 0 and not allow_empty_cols):
        raise ValueError(f"{name} must be non-empty, got shape {out.shape}")
    if shape is not None and out.shape != tuple(shape):
        raise ValueError(f"{name} has shape {out.shape}, expected {tuple(shape)}")
    return out

