"""Independent brute-force reference implementations used by the tests.

Everything here is deliberately written the slow, obvious way (character
walks, nested loops, full sorts) and shares no code with the package, so
test assertions compare two separately derived answers.
"""

import math


def walk_tokens(text, config):
    """Regex-free tokenizer: character walk collecting alphanumeric runs.

    Returns (term, start, end) triples for kept tokens.
    """

    def is_word_char(ch):
        return ch.isalnum() and ch != "_"

    out = []
    i, n = 0, len(text)
    while i < n:
        if not is_word_char(text[i]):
            i += 1
            continue
        j = i
        while j < n and is_word_char(text[j]):
            j += 1
        surface = text[i:j]
        term = surface.casefold() if config.fold_case else surface
        if len(term) >= config.min_term_length and term not in config.stopwords:
            out.append((term, i, j))
        i = j
    return out


def count_stats(token_lists):
    """Nested-loop TF / DF / doc length counts.

    token_lists: dict doc_id -> list of term strings (kept tokens in order).
    Returns (tf, df, doc_len, n) with tf keyed by (doc_id, term).
    """
    tf = {}
    for doc_id, terms in token_lists.items():
        for term in terms:
            key = (doc_id, term)
            tf[key] = tf.get(key, 0) + 1
    vocab = sorted({term for terms in token_lists.values() for term in terms})
    df = {}
    for term in vocab:
        count = 0
        for terms in token_lists.values():
            if term in terms:
                count += 1
        df[term] = count
    doc_len = {doc_id: len(terms) for doc_id, terms in token_lists.items()}
    return tf, df, doc_len, len(token_lists)


def idf_value(n, df):
    return 1.0 + math.log(n / (df + 1))


def classic_score(tf, n, df):
    return tf * idf_value(n, df)


def squared_score(tf, n, df, doc_len):
    return (tf * tf + idf_value(n, df)) / doc_len


def rank_keywords(token_lists, doc_id, k, variant):
    """Full sort of every distinct term of the document by (score desc, term asc)."""
    tf, df, doc_len, n = count_stats(token_lists)
    rows = []
    for term in sorted(set(token_lists[doc_id])):
        t = tf[(doc_id, term)]
        if variant == "classic":
            value = classic_score(t, n, df[term])
        else:
            value = squared_score(t, n, df[term], doc_len[doc_id])
        rows.append((term, value))
    rows.sort(key=lambda row: (-row[1], row[0]))
    return rows[:k]


def pair_stats_table(transactions, min_support):
    """All-pairs nested-loop co-occurrence counts over transaction sets.

    transactions: dict doc_id -> set of terms.  Returns a dict keyed by the
    canonical (a, b) pair mapping to (c_a, c_b, c_ab, n).
    """
    vocab = sorted({term for terms in transactions.values() for term in terms})
    n = len(transactions)
    table = {}
    for i, a in enumerate(vocab):
        for b in vocab[i + 1 :]:
            c_a = c_b = c_ab = 0
            for terms in transactions.values():
                has_a = a in terms
                has_b = b in terms
                if has_a:
                    c_a += 1
                if has_b:
                    c_b += 1
                if has_a and has_b:
                    c_ab += 1
            if c_ab >= min_support:
                table[(a, b)] = (c_a, c_b, c_ab, n)
    return table


def pmi_value(c_a, c_b, c_ab, n):
    return math.log((c_ab / n) / ((c_a / n) * (c_b / n)))


def lr_value(target_c, cond_c, c_ab, n):
    """p(target | cond) / p(target | not cond) with the 0.5 zero-count substitute."""
    rest = target_c - c_ab
    if rest == 0:
        rest = 0.5
    return (c_ab / cond_c) / (rest / (n - cond_c))


def rank_neighbors(table, term, measure, k):
    """Full sort of a term's pairs by (score desc, neighbor asc)."""
    rows = []
    for (a, b), (c_a, c_b, c_ab, n) in table.items():
        if term == a:
            neighbor, target_c, cond_c = b, c_b, c_a
        elif term == b:
            neighbor, target_c, cond_c = a, c_a, c_b
        else:
            continue
        if measure == "pmi":
            value = pmi_value(c_a, c_b, c_ab, n)
        else:
            if cond_c == n:
                continue
            value = lr_value(target_c, cond_c, c_ab, n)
        rows.append((neighbor, value))
    rows.sort(key=lambda row: (-row[1], row[0]))
    return rows[:k]


def bfs_nodes(table, seeds, measure, k, depth):
    """Node set of a breadth-first neighbor expansion over the pair table."""
    seen = set(seeds)
    frontier = list(dict.fromkeys(seeds))
    for _ in range(depth):
        nxt = []
        for term in frontier:
            for neighbor, _ in rank_neighbors(table, term, measure, k):
                if neighbor not in seen:
                    seen.add(neighbor)
                    nxt.append(neighbor)
        frontier = nxt
    return seen


def random_corpus(rng, max_docs=50):
    """A small random corpus as (doc_id -> text) with mixed case and punctuation."""
    vocab = [
        "alpha", "bravo", "charlie", "delta", "echo", "foxtrot", "golf", "hotel",
        "india", "juliet", "kilo", "lima", "mike", "november", "oscar", "papa",
        "quebec", "romeo", "sierra", "tango", "the", "of", "and", "x7", "q",
    ]
    separators = [" ", " ", " ", ", ", ". ", "; ", "\n", " - "]
    docs = {}
    for i in range(rng.randint(1, max_docs)):
        words = []
        for _ in range(rng.randint(0, 40)):
            word = rng.choice(vocab)
            if rng.random() < 0.3:
                word = word.upper() if rng.random() < 0.5 else word.capitalize()
            words.append(word)
        text = ""
        for word in words:
            text += word + rng.choice(separators)
        docs[f"doc{i:02d}"] = text
    return docs
