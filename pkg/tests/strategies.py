from hypothesis import strategies as st

from hilbchar.partitions import partitions_of


def partitions(min_n=0, max_n=8):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def partition_pairs(min_n=1, max_n=8):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))
    )
