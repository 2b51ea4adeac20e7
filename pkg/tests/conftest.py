import random

import pytest

from aperylef import AperyError, create_semigroup

CORPUS_SEED = 20260808
CORPUS_SIZE = 200


def random_semigroup_corpus(count=CORPUS_SIZE, seed=CORPUS_SEED):
    """Fixed-seed corpus of distinct numerical semigroups for invariant suites."""
    rng = random.Random(seed)
    seen, out = set(), []
    while len(out) < count:
        m = rng.randint(2, 28)
        k = rng.randint(2, 5)
        extras = sorted(rng.sample(range(m + 1, m + 40), k - 1))
        try:
            S = create_semigroup([m] + extras)
        except AperyError:
            continue
        if S.generators in seen:
            continue
        seen.add(S.generators)
        out.append(S)
    return out


@pytest.fixture(scope="session")
def corpus():
    return random_semigroup_corpus()
