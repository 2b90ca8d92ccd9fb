"""Test suite for Product Scraper Engine."""
