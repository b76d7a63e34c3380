import pytest

from src.enumeration.dictionary import (
    OrderedSolutionDictionary,
    SolutionDictionary,
    create_dictionary,
)
from src.enumeration.state import EnumerationState
from src.utils.errors import ConfigurationError, ContractViolation, DictionaryCapExceeded


@pytest.fixture(params=["hash", "ordered"])
def dictionary(request):
    return create_dictionary(request.param)


class TestSolutionDictionary:
    """Test cases for both dictionary backends."""

    def test_add_and_contains(self, dictionary):
        assert dictionary.add((0, 1))
        assert (0, 1) in dictionary
        assert (1, 2) not in dictionary

    def test_duplicate_rejected(self, dictionary):
        dictionary.add((0, 1))

        assert not dictionary.add((0, 1))
        assert len(dictionary) == 1

    def test_lookups_counted(self, dictionary):
        dictionary.add((0, 1))
        dictionary.add((0, 1))
        _ = (2, 3) in dictionary

        assert dictionary.lookups == 3

    def test_cap(self):
        dictionary = SolutionDictionary(max_entries=2)
        dictionary.add((0, 1))
        dictionary.add((1, 2))

        with pytest.raises(DictionaryCapExceeded) as excinfo:
            dictionary.add((2, 3))

        assert excinfo.value.cap == 2
        assert not dictionary.add((0, 1))

    @pytest.mark.parametrize("backend", ["hash", "ordered"])
    def test_negative_cap_rejected(self, backend):
        with pytest.raises(ContractViolation):
            create_dictionary(backend, max_entries=-5)

    def test_ordered_keeps_keys_sorted(self):
        dictionary = OrderedSolutionDictionary()
        for key in [(2, 3), (0, 1), (1, 2)]:
            dictionary.add(key)

        assert list(dictionary) == [(0, 1), (1, 2), (2, 3)]

    def test_unknown_backend(self):
        with pytest.raises(ConfigurationError):
            create_dictionary("trie")


class TestEnumerationState:
    """Test cases for the queue/dictionary pair."""

    def test_bfs_is_fifo(self):
        state = EnumerationState(2, SolutionDictionary(), "bfs")
        state.offer((0, 1))
        state.offer((1, 2))

        assert state.take() == (0, 1)

    def test_dfs_is_lifo(self):
        state = EnumerationState(2, SolutionDictionary(), "dfs")
        state.offer((0, 1))
        state.offer((1, 2))

        assert state.take() == (1, 2)

    def test_offer_filters_duplicates(self):
        state = EnumerationState(2, SolutionDictionary())

        assert state.offer((0, 1))
        assert not state.offer((0, 1))
        assert len(state.queue) == 1
        assert state.peak_queue == 1

    def test_consistency(self):
        state = EnumerationState(2, SolutionDictionary())
        state.offer((0, 1))
        state.offer((1, 2))
        state.take()
        state.emitted += 1

        assert state.is_consistent()

    def test_unknown_traversal(self):
        with pytest.raises(ConfigurationError):
            EnumerationState(2, SolutionDictionary(), "random")
