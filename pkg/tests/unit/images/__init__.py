"""Image classification tests package"""
