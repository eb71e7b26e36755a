namespace gagc {}
