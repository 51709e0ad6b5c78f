"""SVG rendering of straight-line drawings of K_n."""
