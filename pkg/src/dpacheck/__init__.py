"""dpacheck: semantic-frame based GDPR compliance checking for DPAs."""

__version__ = "0.1.0"
