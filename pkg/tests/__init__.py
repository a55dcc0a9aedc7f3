"""
chevcheck Test Suite

This package contains the tests for the chevcheck library, CLI and browser,
organized into three layers:
- Unit tests: fields, root data, the Chevalley form, group and subspace arithmetic
- Integration tests: scenarios, the suite runner and the CLI end to end
- TUI tests: the report browser driven through Textual's Pilot
"""
