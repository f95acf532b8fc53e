import pytest

from rectdesign import construct, tables


@pytest.fixture(scope="session")
def ds_10_5_2():
    """The searched DS(10, 5; 2) over Z5, shared across the whole session."""
    return construct.resolve_scheme("search:10,5,2")


@pytest.fixture(scope="session")
def ds_8_4_2():
    """DS(8, 4; 2) resolves over the elementary abelian group of order 4
    (an exhaustive search shows no cyclic solution exists)."""
    return construct.resolve_scheme("search:8,4,2,ea")


def corpus_recipes():
    """Every bundled table recipe plus a spread of direct constructions."""
    extra = [
        "lemma1 n1=fano n2=fano",
        "thm3 n1=identity:2 t=2",
        "thm4 n1=sh:2 n2=sh:2 m=3",
        "cor1 m=3 t=2",
        "cor3 m=3 t=2",
        "cor4 m=3 t=1",
        "cor5 m=2 t=2",
        "cor7 m=3 t=2",
        "thm5 design=mr2 n=3",
        "thm6 t=2",
        "ex1 n=4",
        "ex2",
        "thm7 q=3 m=2",
        "cor9 q=7",
        "cor10 q=4",
        "cor11 p=5 shifted=0",
        "cor11 p=3 shifted=1",
        "thm8 q=5 variant=i",
        "thm8 q=5 variant=iii",
        "thm8 q=9 variant=i",
        "thm9 ds=sylvester:2",
        "thm9 ds=field:4",
        "thm10 ds=field:3",
        "cor12 ds=sylvester:3 t=2",
    ]
    table_recipes = [
        row.recipe
        for name in ("table4.tsv", "table5.tsv")
        for row in tables.load_design_table(name)
        if row.recipe != "-"
    ]
    return extra + table_recipes
