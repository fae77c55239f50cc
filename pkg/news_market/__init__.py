"""
news-market
A two-regime market simulator (news-driven and trend-following expectations)
and a toolkit for the stylized facts of return series.
"""

__version__ = "1.0.0"
__author__ = "News Market Team"
