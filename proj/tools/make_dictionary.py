#!/usr/bin/env python3
"""Regenerate data/dictionary.txt: the 10,000 most frequent English words
(lowercase a-z only), one per line in rank order. Single letters other than
"a" and "i" are tokenizer fragments ("s" from "it's") and are skipped."""
import re
import sys

from wordfreq import top_n_list

SIZE = 10000


def main(path):
    words = [
        w
        for w in top_n_list("en", 4 * SIZE)
        if re.fullmatch("[a-z]+", w) and (len(w) > 1 or w in ("a", "i"))
    ]
    with open(path, "w", encoding="utf-8") as out:
        out.write("\n".join(words[:SIZE]) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/dictionary.txt")
