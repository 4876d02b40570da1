"""Application layer tests package"""
