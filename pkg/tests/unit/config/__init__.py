"""Configuration tests package"""
