"""Word-representability of split graphs via semi-transitive orientations."""
