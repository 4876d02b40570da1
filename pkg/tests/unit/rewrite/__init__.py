"""Rewriting tests package"""
