"""clfinfo: how much co-occurring words tell you about Mandarin numeral
classifiers, measured as plug-in mutual information over dependency-parsed
corpora, with bootstrap confidence intervals."""

__version__ = "0.1.0"
