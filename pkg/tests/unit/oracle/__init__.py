"""Oracle tests package"""
