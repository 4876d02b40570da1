"""Command line tests package"""
