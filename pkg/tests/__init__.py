# Tests for pte-toolkit
