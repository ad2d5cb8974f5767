import numpy as np
import pytest

from ifsmp import cholesky, gram_matrix, lll_reduce


def random_gram(rng, nt, p=10.0):
    h = rng.standard_normal((nt, nt))
    return gram_matrix(h, p)


def random_reduced_basis(rng, nt, p=10.0, delta=0.75):
    return lll_reduce(cholesky(random_gram(rng, nt, p)), delta).r_bar


@pytest.fixture
def rng():
    return np.random.default_rng(20230817)
