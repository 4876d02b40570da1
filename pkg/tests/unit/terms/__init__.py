"""Term and grammar tests package"""
