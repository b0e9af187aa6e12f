"""Inner-faithfulness certification for finite-dimensional matrix models of compact quantum groups."""
