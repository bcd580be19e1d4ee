import math
import random

import pytest

from textdenoise.readability import (
    HIGHER_IS_HARDER,
    IndexKind,
    ReadabilityVector,
    difficulty_key,
    score,
    score_all,
    score_rows,
    score_vector,
)
from textdenoise.textseg import Document, segment

from golden_readability import GOLDEN_SENTENCES, hand_counts, hand_formulas

ALL_KINDS = list(IndexKind)


def _sentence(text):
    doc = segment(text)
    assert len(doc.sentences) == 1, text
    return doc.sentences[0]


class TestWorkedExamples:
    """The three spec-level worked values for 'The cat sat.'"""

    def test_fres(self):
        assert score(_sentence("The cat sat."), IndexKind.FRES) == pytest.approx(119.19, abs=1e-9)

    def test_fi(self):
        assert score(_sentence("The cat sat."), IndexKind.FI) == pytest.approx(1.2, abs=1e-9)

    def test_forcast(self):
        assert score(_sentence("The cat sat."), IndexKind.FORCAST) == pytest.approx(5.0, abs=1e-9)


@pytest.mark.parametrize("text,words", GOLDEN_SENTENCES, ids=lambda v: v if isinstance(v, str) else "")
def test_golden_sentences(text, words):
    sent = _sentence(text)
    assert [(t.normalized, t.syllables) for t in sent.word_tokens()] == words
    expected = hand_formulas(*hand_counts(words))
    for kind in ALL_KINDS:
        assert score(sent, kind) == pytest.approx(expected[kind.value], abs=1e-9), (text, kind)


class TestScoreAll:
    def test_order_preserved(self):
        doc = segment("The cat sat. It slept.")
        result = score_all(doc)
        assert [idx for idx, _ in result] == [0, 1]

    def test_identical_sentences_identical_vectors(self):
        doc = segment("The cat sat. The cat sat. The cat sat.")
        vectors = [v for _, v in score_all(doc)]
        assert vectors[0] == vectors[1] == vectors[2]

    def test_consistent_with_single_score(self):
        doc = segment("Extracellular glutamate levels rise.")
        (idx, vec), = score_all(doc)
        for kind in ALL_KINDS:
            assert vec.get(kind) == score(doc.sentences[0], kind)

    def test_single_sentence_document_equals_sentence(self):
        doc = segment("The investigation continued.")
        for kind in ALL_KINDS:
            assert score(doc, kind) == score(doc.sentences[0], kind)

    def test_unscorable_unit(self):
        with pytest.raises(ValueError, match="unscorable"):
            score_vector(Document(id="empty", sentences=[]))


class TestDifficultyKey:
    def test_identity_for_fi(self):
        assert difficulty_key(10.0, IndexKind.FI) == 10.0

    def test_negated_for_fres(self):
        assert difficulty_key(30.0, IndexKind.FRES) == -30.0

    def test_fres_ordering_by_difficulty(self):
        scores = [90.0, 30.0, 60.0]
        order = sorted(range(3), key=lambda i: -difficulty_key(scores[i], IndexKind.FRES))
        assert order == [1, 2, 0]

    def test_all_kinds_monotone_in_difficulty(self):
        for kind in ALL_KINDS:
            lo, hi = 1.0, 2.0
            if kind in HIGHER_IS_HARDER:
                assert difficulty_key(hi, kind) > difficulty_key(lo, kind)
            else:
                assert difficulty_key(hi, kind) < difficulty_key(lo, kind)


def _doc_from_stats(stats):
    """Build a document of synthetic sentences from (W, Syl, C, M) tuples."""
    from textdenoise.textseg import Sentence, Token

    sentences = []
    for i, (w, syl, cx, mono) in enumerate(stats):
        tokens = [Token(surface="w", normalized="w", syllables=1, is_word=True)] * w
        sentences.append(Sentence(
            index=i, text=f"synthetic {i}", tokens=tokens,
            word_count=w, syllable_count=syl,
            complex_word_count=cx, monosyllable_count=mono,
        ))
    return Document(id="synthetic", sentences=sentences)


class TestFormulaProperties:
    def test_fi_decomposition(self):
        doc = _doc_from_stats([(10, 14, 2, 6)])
        sent = doc.sentences[0]
        avg_len = 10 / 1
        complex_ratio = 2 / 10
        assert score(sent, IndexKind.FI) == pytest.approx(0.4 * (avg_len + 100 * complex_ratio))

    def test_fi_increases_with_complex_share(self):
        base = _doc_from_stats([(12, 20, 2, 4)]).sentences[0]
        doubled = _doc_from_stats([(12, 20, 4, 4)]).sentences[0]
        assert score(doubled, IndexKind.FI) > score(base, IndexKind.FI)

    def test_fres_decreasing_in_syllables_per_word(self):
        rng = random.Random(7)
        for _ in range(50):
            w = rng.randint(2, 30)
            syl = rng.randint(w, 4 * w)
            s1 = _doc_from_stats([(w, syl, 0, 0)]).sentences[0]
            s2 = _doc_from_stats([(w, syl + 1, 0, 0)]).sentences[0]
            assert score(s2, IndexKind.FRES) < score(s1, IndexKind.FRES)

    def test_fres_decreasing_in_words_per_sentence(self):
        # fixed syllables-per-word ratio, growing sentence length
        s1 = _doc_from_stats([(10, 20, 0, 0)]).sentences[0]
        s2 = _doc_from_stats([(20, 40, 0, 0)]).sentences[0]
        assert score(s2, IndexKind.FRES) < score(s1, IndexKind.FRES)

    def test_document_scores_pool_counts(self):
        doc = _doc_from_stats([(10, 15, 1, 5), (20, 32, 3, 8)])
        w, s, syl, cx, mono = 30, 2, 47, 4, 13
        assert score(doc, IndexKind.FI) == pytest.approx(0.4 * (w / s + 100 * cx / w))
        assert score(doc, IndexKind.FRES) == pytest.approx(206.835 - 1.015 * w / s - 84.6 * syl / w)
        assert score(doc, IndexKind.SMOG) == pytest.approx(1.0430 * math.sqrt(cx * 30 / s) + 3.1291)
        assert score(doc, IndexKind.FORCAST) == pytest.approx(20 - (mono * 150 / w) / 10)
        assert score(doc, IndexKind.FKRI) == pytest.approx(0.39 * w / s + 11.8 * syl / w - 15.59)

    def test_case_invariance(self):
        lower = segment("extracellular glutamate levels rise.")
        upper = segment("EXTRACELLULAR GLUTAMATE LEVELS RISE.")
        for kind in ALL_KINDS:
            assert score(lower.sentences[0], kind) == score(upper.sentences[0], kind)

    def test_scores_finite_for_one_word(self):
        sent = _sentence("Antidisestablishmentarianism.")
        for kind in ALL_KINDS:
            assert math.isfinite(score(sent, kind))


class TestVectorAndRows:
    def test_get_matches_fields(self):
        vec = ReadabilityVector(fi=1.0, fres=2.0, smog=3.0, forcast=4.0, fkri=5.0, basis="sentence")
        assert [vec.get(k) for k in ALL_KINDS] == [1.0, 2.0, 3.0, 4.0, 5.0]

    def test_from_name(self):
        assert IndexKind.from_name("FI") is IndexKind.FI
        assert IndexKind.from_name("fres") is IndexKind.FRES
        with pytest.raises(ValueError, match="unknown readability index"):
            IndexKind.from_name("ari")

    def test_score_rows_shape(self):
        doc = segment("The cat sat. It slept.", doc_id="demo")
        rows = score_rows(doc)
        assert len(rows) == 2
        assert rows[0][:2] == ("demo", 0)
        assert len(rows[0]) == 7
