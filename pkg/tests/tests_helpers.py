"""Small shared constructors for tests."""

from reflorbit.cyclo import make_field
from reflorbit.linalg import Mat
from reflorbit.midconv import MatTuple


def g23_exemplar_tuple():
    f5 = make_field(5)
    q = f5.root(1)
    t = q**3 + q**2
    return MatTuple(
        [
            Mat.from_rows(f5, [[1, 0, 0], [0, 1, 1], [0, 0, -1]]),
            Mat.from_rows(f5, [[0, -1, 0], [-1, 0, 0], [1 - t, 1 - t, 1]]),
            Mat.from_rows(f5, [[1, 0, 0], [t, -1, -1], [0, 0, 1]]),
        ]
    )
