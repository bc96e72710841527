import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from citemetrics import ArticleRecord, Corpus


def make_corpus(groups: dict[str, list[int]], doc_types=None,
                census_year=2010, pub_window=(2008, 2009)) -> Corpus:
    """Corpus from {group: [citation counts]}; optional per-article doc types.

    ``doc_types``, when given, maps group -> list of doc-type labels aligned
    with the citation list; otherwise every record is an "article".
    """
    records = []
    years = itertools.cycle(sorted(pub_window))
    serial = 0
    for group, citations in groups.items():
        for k, cites in enumerate(citations):
            doc_type = doc_types[group][k] if doc_types else "article"
            records.append(ArticleRecord(
                article_id=f"a{serial:04d}",
                group_key=group,
                pub_year=next(years),
                doc_type=doc_type,
                citations=cites,
            ))
            serial += 1
    return Corpus(tuple(records), census_year, frozenset(pub_window))
