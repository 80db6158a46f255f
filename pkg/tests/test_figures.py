import pytest

from admshell.errors import ConfigError
from admshell.figures import compare_fixture, fixture_poset, generate_fixture, load_fixture
from admshell.shellability import verify_NCM


@pytest.mark.parametrize("name,size", [("fig3", 11), ("fig4", 13)])
def test_fixture_matches_generation(name, size):
    cmp = compare_fixture(name)
    assert cmp.equal, cmp
    assert fixture_poset(name).n == size
    assert generate_fixture(name)[1].n == size


def test_fixture_words_compare_as_elements():
    """Fixture words need not be the reduced words the generator prints."""
    data = load_fixture("fig3")
    cs, gen = generate_fixture("fig3")
    assert "s0s4s1" in data["elements"] and "s0s4s1" not in gen.names
    G = cs.adm.G
    assert G.parse_affine_word("s0s4s1") == G.parse_affine_word("s0s1s4")


def test_fig4_is_not_three_cohen_macaulay():
    assert not verify_NCM(fixture_poset("fig4"), 3).passed


def test_unknown_fixture():
    with pytest.raises(ConfigError):
        load_fixture("fig9")
