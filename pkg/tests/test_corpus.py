import io

from app.config import GeneratorConfig, ProjectConfig, load_config
from app.functions import families as fam
from app.functions.corpus import free_trees, generated_connected, random_forests, random_graphs, read_graph6_file
from app.functions.graph_core import is_forest, to_graph6
from app.scripts.census import KNOWN_PAIRS, run_census
from app.scripts.generator.generate_random import generate_random


def test_missing_config_gives_defaults(tmp_path):
    cfg = load_config(tmp_path / "absent.toml")
    assert cfg == ProjectConfig()
    assert cfg.guards.hochster_max_n == 12


def test_config_sections_override(tmp_path):
    path = tmp_path / "cfg.toml"
    path.write_text('[homology]\nfield = "p:3"\n[survey]\njobs = 4\n')
    cfg = load_config(path)
    assert cfg.homology.field == "p:3"
    assert cfg.survey.jobs == 4
    assert cfg.survey.seed == 2024


def test_free_tree_counts():
    assert [len(list(free_trees(n))) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]


def test_generated_connected_items():
    items = list(generated_connected(4))
    assert len(items) == 6
    assert all(item.line is None and to_graph6(item.graph) == item.graph6 for item in items)


def test_random_corpora_are_seeded():
    first = [to_graph6(g) for g in random_graphs(10, 3, 8, seed=5)]
    again = [to_graph6(g) for g in random_graphs(10, 3, 8, seed=5)]
    assert first == again
    assert all(3 <= g.n <= 8 for g in random_graphs(10, 3, 8, seed=5))
    assert all(is_forest(f) for f in random_forests(20, 2, 12))


def test_read_graph6_stream():
    items = list(read_graph6_file(io.StringIO(">>graph6<<Ch\n\nC~\n")))
    assert [(i.line, i.graph6) for i in items] == [(1, "Ch"), (3, "C~")]


def test_generate_random_writes_connected_corpus(tmp_path):
    out = generate_random(GeneratorConfig(count=12, min_n=3, max_n=7, seed=9), tmp_path / "corpus.g6")
    items = list(read_graph6_file(out))
    assert len(items) == 12


def test_census_over_small_file(tmp_path):
    source = tmp_path / "n4.g6"
    source.write_text("".join(item.graph6 + "\n" for item in generated_connected(4)))
    assert run_census(str(source), tmp_path / "out", jobs=1, field="q")
    assert (tmp_path / "out" / "scatter_n4.tsv").read_text() == "1\t1\t1\n2\t2\t5\n"
    assert len((tmp_path / "out" / "records.csv").read_text().splitlines()) == 7


def test_known_census_pairs_contain_every_family_pair():
    known = KNOWN_PAIRS[9]
    assert len(known) == 17
    for pairs in (fam.radius2_pairs(9), fam.split_pairs(9), fam.gkr_pairs(9), fam.hnp_pairs(9)):
        assert pairs.as_set() <= known
