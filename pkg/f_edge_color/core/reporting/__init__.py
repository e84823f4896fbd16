"""Classification reports and graph export."""
