import random

import pytest

from textdenoise.textseg import (
    DEFAULT_SYLLABLE_EXCEPTIONS,
    Document,
    count_syllables,
    load_abbreviations,
    load_syllable_exceptions,
    segment,
    sentence_stats,
    tokenize,
)


class TestSegment:
    def test_two_sentences(self):
        doc = segment("The cat sat. It slept.")
        assert [s.text for s in doc.sentences] == ["The cat sat.", "It slept."]
        assert [s.word_count for s in doc.sentences] == [3, 2]

    def test_empty_input(self):
        assert segment("").sentences == []
        assert segment("   \n\t ").sentences == []

    def test_abbreviations_do_not_split(self):
        doc = segment("Dr. Smith arrived at 5 p.m. today.")
        assert len(doc.sentences) == 1

    def test_biomedical_abbreviations(self):
        doc = segment("See Fig. 3 for details. The assay used approx. 5 ml.")
        assert len(doc.sentences) == 2

    def test_initials_do_not_split(self):
        doc = segment("J. Smith and R. Jones collaborated. They wrote a paper.")
        assert len(doc.sentences) == 2

    def test_question_and_exclamation(self):
        doc = segment("Did it work? It did! Great news.")
        assert len(doc.sentences) == 3

    def test_zero_word_fragments_dropped(self):
        doc = segment("!!! First sentence. Second sentence.")
        assert [s.text for s in doc.sentences] == ["First sentence.", "Second sentence."]
        assert segment("... !!! ...").sentences == []

    def test_indices_are_contiguous(self):
        doc = segment("One. Two. Three. Four.")
        assert [s.index for s in doc.sentences] == [0, 1, 2, 3]

    def test_whitespace_collapsed(self):
        doc = segment("The  cat\n\tsat.  It slept.")
        assert doc.sentences[0].text == "The cat sat."

    def test_no_terminal_punctuation(self):
        doc = segment("a trailing fragment without a period")
        assert len(doc.sentences) == 1

    def test_lowercase_after_period_does_not_split(self):
        doc = segment("The value was 5.2 approximately. more text follows here.")
        assert len(doc.sentences) == 1

    def test_custom_abbreviations(self, tmp_path):
        path = tmp_path / "abbr.txt"
        path.write_text("tbl.\n")
        doc = segment("See Tbl. 4 below. Next sentence.", abbreviations=load_abbreviations(path))
        assert len(doc.sentences) == 2
        # default list no longer applies once replaced
        doc2 = segment("Dr. Smith left. He returned.", abbreviations=load_abbreviations(path))
        assert len(doc2.sentences) == 3


class TestCountSyllables:
    @pytest.mark.parametrize("word,expected", [
        ("cat", 1),
        ("readability", 5),
        ("make", 1),
        ("the", 1),
        ("table", 2),
        ("apple", 2),
        ("whale", 1),
        ("molecule", 3),
        ("glutamate", 3),
        ("understanding", 4),
        ("banana", 3),
        ("tree", 1),
        ("science", 2),   # exception table
        ("ischemia", 4),  # exception table
    ])
    def test_known_words(self, word, expected):
        assert count_syllables(word) == expected

    def test_case_insensitive(self):
        assert count_syllables("Readability") == count_syllables("READABILITY") == 5

    def test_not_a_word(self):
        with pytest.raises(ValueError, match="not a word"):
            count_syllables("1234")
        with pytest.raises(ValueError, match="not a word"):
            count_syllables("...")

    def test_mixed_alphanumeric(self):
        # digit group adds one syllable to the letter runs
        assert count_syllables("10min") == 2
        assert count_syllables("ca4") == 2

    def test_exception_file_override(self, tmp_path):
        path = tmp_path / "syl.txt"
        path.write_text("cat\t9\n")
        table = load_syllable_exceptions(path)
        assert count_syllables("cat", table) == 9
        # defaults are kept underneath the override
        assert count_syllables("science", table) == 2

    def test_at_least_one_and_at_most_letters(self):
        words = ["a", "strengths", "rhythm", "queue", "biomedical", "xylophone",
                 "cryptic", "thought", "each", "every", "sentence"]
        for w in words:
            n = count_syllables(w)
            letters = sum(1 for c in w if c.isalpha())
            assert 1 <= n <= letters, w


class TestSentenceStats:
    def test_simple(self):
        assert sentence_stats(tokenize("The cat sat")) == (3, 3, 0, 3)

    def test_complex_words(self):
        # un-der-stand-ing = 4, read-a-bil-i-ty = 5
        assert sentence_stats(tokenize("Understanding readability")) == (2, 9, 2, 0)

    def test_empty(self):
        assert sentence_stats([]) == (0, 0, 0, 0)

    def test_punctuation_only(self):
        assert sentence_stats(tokenize("... --- !!!")) == (0, 0, 0, 0)

    def test_numbers_are_words(self):
        wc, syl, cx, mono = sentence_stats(tokenize("It cost 2012 dollars"))
        assert wc == 4
        assert mono >= 2  # "It" and "2012"


class TestTokenize:
    def test_hyphenated_word_stays_whole(self):
        tokens = tokenize("a large-scale study")
        assert [t.normalized for t in tokens] == ["a", "large-scale", "study"]

    def test_punctuation_stripped(self):
        tokens = tokenize('He said, "stop."')
        assert [t.normalized for t in tokens if t.is_word] == ["he", "said", "stop"]

    def test_non_word_token(self):
        (tok,) = tokenize("--")
        assert not tok.is_word
        assert tok.normalized == ""
        assert tok.syllables == 0

    def test_word_invariants(self):
        for tok in tokenize("The mitochondria, (all 5 of them!) survived."):
            if tok.is_word:
                assert tok.syllables >= 1
                assert tok.normalized
            else:
                assert tok.normalized == ""


WORD_POOL = [
    "the", "cat", "sat", "mitochondria", "glutamate", "ischemia", "level",
    "rose", "fast", "neurons", "in", "hippocampus", "after", "brief",
    "occlusion", "we", "measured", "it", "5min", "simple", "words",
]


def _random_text(rng: random.Random) -> str:
    sentences = []
    for _ in range(rng.randint(1, 12)):
        words = [rng.choice(WORD_POOL) for _ in range(rng.randint(1, 15))]
        words[0] = words[0].capitalize()
        sentences.append(" ".join(words) + rng.choice([".", "!", "?"]))
    return " ".join(sentences)


def test_segmentation_idempotent():
    rng = random.Random(42)
    for _ in range(50):
        text = _random_text(rng)
        doc = segment(text)
        rejoined = " ".join(s.text for s in doc.sentences)
        doc2 = segment(rejoined)
        assert [s.text for s in doc2.sentences] == [s.text for s in doc.sentences]


def test_word_tokens_conserved():
    rng = random.Random(43)
    for _ in range(50):
        text = _random_text(rng)
        doc = segment(text)
        from_sentences = [t.normalized for s in doc.sentences for t in s.tokens if t.is_word]
        from_raw = [t.normalized for t in tokenize(text) if t.is_word]
        assert from_sentences == from_raw


def test_mono_and_complex_counts_disjoint_and_exact():
    rng = random.Random(44)
    for _ in range(30):
        doc = segment(_random_text(rng))
        for s in doc.sentences:
            words = s.word_tokens()
            assert s.word_count == len(words)
            assert s.syllable_count == sum(t.syllables for t in words)
            assert s.monosyllable_count == sum(1 for t in words if t.syllables == 1)
            assert s.complex_word_count == sum(1 for t in words if t.syllables >= 3)
            assert s.complex_word_count + s.monosyllable_count <= s.word_count


def test_default_exceptions_are_not_mutated_by_loader(tmp_path):
    before = dict(DEFAULT_SYLLABLE_EXCEPTIONS)
    path = tmp_path / "syl.txt"
    path.write_text("science\t7\n")
    load_syllable_exceptions(path)
    assert DEFAULT_SYLLABLE_EXCEPTIONS == before


def test_document_type_defaults():
    doc = Document(id="d", sentences=[])
    assert doc.source_path is None
