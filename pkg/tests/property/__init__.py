"""Property-based tests package"""
