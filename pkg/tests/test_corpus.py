import io

import pytest

from citemetrics import (
    ArticleRecord,
    Corpus,
    CorpusError,
    CorpusValidationError,
    group_sizes,
    parse_csv,
    to_csv,
)

HEADER = "article_id,group,pub_year,doc_type,citations"


def parse(text, census_year=2010, pub_window=(2008, 2009)):
    return parse_csv(io.StringIO(text), census_year, pub_window)


class TestParseCsv:
    def test_header_only_gives_empty_corpus(self):
        corpus = parse(HEADER + "\n")
        assert len(corpus) == 0
        assert corpus.census_year == 2010

    def test_two_rows_preserve_order(self):
        corpus = parse(
            f"{HEADER}\n"
            "a1,J Math,2008,article,3\n"
            "a2,J Stat,2009,review,0\n")
        assert [rec.article_id for rec in corpus.records] == ["a1", "a2"]
        assert corpus.records[0] == ArticleRecord("a1", "J Math", 2008, "article", 3)

    def test_bytes_input(self):
        corpus = parse_csv(
            io.BytesIO(f"{HEADER}\na1,J,2008,article,5\n".encode()),
            2010, {2008})
        assert corpus.records[0].citations == 5

    def test_negative_citations_names_row_and_column(self):
        with pytest.raises(CorpusValidationError) as err:
            parse(f"{HEADER}\na1,J,2008,article,-1\n")
        assert "row:2 col:citations" in str(err.value)

    def test_non_integer_citations(self):
        with pytest.raises(CorpusValidationError) as err:
            parse(f"{HEADER}\na1,J,2008,article,two\n")
        assert "row:2 col:citations" in str(err.value)

    def test_duplicate_article_id(self):
        with pytest.raises(CorpusValidationError) as err:
            parse(f"{HEADER}\na1,J,2008,article,1\na1,K,2009,article,2\n")
        assert "row:3 col:article_id" in str(err.value)

    def test_empty_group_and_doc_type(self):
        with pytest.raises(CorpusValidationError) as err:
            parse(f"{HEADER}\na1,,2008,,1\n")
        message = str(err.value)
        assert "row:2 col:group" in message
        assert "row:2 col:doc_type" in message

    def test_malformed_header(self):
        with pytest.raises(CorpusValidationError) as err:
            parse("id,journal,year,type,cites\na1,J,2008,article,1\n")
        assert "row:1 col:header" in str(err.value)

    def test_rows_outside_window_rejected_listing_each_row(self):
        with pytest.raises(CorpusValidationError) as err:
            parse(
                f"{HEADER}\n"
                "a1,J,2008,article,1\n"
                "a2,J,2011,article,2\n"
                "a3,J,2007,article,3\n")
        message = str(err.value)
        assert "row:3 col:pub_year" in message
        assert "row:4 col:pub_year" in message
        assert "row:2" not in message

    def test_all_problems_collected_not_just_first(self):
        with pytest.raises(CorpusValidationError) as err:
            parse(f"{HEADER}\na1,J,2008,article,-1\na2,J,2008,article,x\n")
        assert len(err.value.problems) == 2

    def test_quoted_fields_round_trip(self):
        corpus = parse(f'{HEADER}\na1,"J Math, Appl",2008,article,2\n')
        assert corpus.records[0].group_key == "J Math, Appl"
        assert parse(to_csv(corpus)) == corpus

    def test_round_trip_identity(self):
        corpus = parse(
            f"{HEADER}\n"
            "a1,J Math,2008,article,3\n"
            "a2,J Stat,2009,review,0\n"
            "a3,J Math,2008,letter,7\n")
        assert parse(to_csv(corpus)) == corpus


class TestCorpusInvariants:
    def test_constructor_rejects_out_of_window_year(self):
        rec = ArticleRecord("a1", "J", 2011, "article", 0)
        with pytest.raises(CorpusError):
            Corpus((rec,), 2010, frozenset({2008, 2009}))

    def test_constructor_rejects_duplicate_ids(self):
        recs = (ArticleRecord("a1", "J", 2008, "article", 0),
                ArticleRecord("a1", "K", 2008, "article", 1))
        with pytest.raises(CorpusError):
            Corpus(recs, 2010, frozenset({2008}))

    def test_constructor_rejects_negative_citations(self):
        rec = ArticleRecord("a1", "J", 2008, "article", -3)
        with pytest.raises(CorpusError):
            Corpus((rec,), 2010, frozenset({2008}))

    def test_group_indices_first_appearance_order(self):
        corpus = parse(
            f"{HEADER}\n"
            "a1,B,2008,article,1\n"
            "a2,A,2008,article,1\n"
            "a3,B,2009,article,1\n")
        assert list(corpus.group_indices()) == ["B", "A"]
        assert corpus.group_indices()["B"] == [0, 2]


class TestGroupSizes:
    def test_empty_corpus_gives_empty_map(self):
        assert group_sizes(parse(HEADER + "\n")) == {}

    def test_counts_and_sums(self):
        corpus = parse(f"{HEADER}\na1,J,2008,article,0\na2,J,2009,article,3\n")
        assert group_sizes(corpus) == {"J": (2, 3)}

    def test_fixture_totals_match_reference_row(self):
        # 275 records summing to 619 citations under one key
        counts = [0] * 150 + [1] * 100 + [2] * 20 + [50, 52, 53, 54] + [270]
        assert len(counts) == 275 and sum(counts) == 619
        rows = "\n".join(
            f"p{i},Behav Res Methods,2008,article,{c}" for i, c in enumerate(counts))
        corpus = parse(f"{HEADER}\n{rows}\n")
        assert group_sizes(corpus) == {"Behav Res Methods": (275, 619)}

    def test_totals_add_up_across_groups(self):
        corpus = parse(
            f"{HEADER}\n"
            "a1,A,2008,article,2\n"
            "a2,B,2008,article,5\n"
            "a3,A,2009,review,1\n")
        sizes = group_sizes(corpus)
        assert sum(n for n, _ in sizes.values()) == len(corpus)
        assert sum(c for _, c in sizes.values()) == sum(corpus.citations())
