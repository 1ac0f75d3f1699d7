"""Batch text-analytics engine for tweet corpora.

Pipeline: ingest CSV -> clean and tokenize -> lexicon sentiment/emotion
scoring -> descriptive reports (n-grams, fear curve, source and geo
summaries) -> Naive Bayes / logistic-regression sentiment classifiers with
length-bucketed evaluation.
"""

__version__ = "0.1.0"
