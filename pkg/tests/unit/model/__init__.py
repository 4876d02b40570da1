"""Algebra model tests package"""
