import numpy as np
import pytest

from kdframes.frames import Frame, complement_etf, orthonormal_frame, sic_qubit


@pytest.fixture(scope="session")
def sic() -> Frame:
    return sic_qubit()


@pytest.fixture(scope="session")
def trine() -> Frame:
    # Three real unit vectors in C^2 at mutual squared overlap 1/4.
    vectors = np.array(
        [
            [1.0, 0.0],
            [0.5, np.sqrt(3.0) / 2.0],
            [0.5, -np.sqrt(3.0) / 2.0],
        ],
        dtype=complex,
    )
    return Frame(vectors)


@pytest.fixture(scope="session")
def catalog() -> list[tuple[str, Frame]]:
    """Frames the verification suites sweep over."""
    base = sic_qubit()
    frames = [("sic2", base), ("sic2-complement", complement_etf(base))]
    frames += [(f"basis-{d}", orthonormal_frame(d)) for d in range(2, 6)]
    return frames
