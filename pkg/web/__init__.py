"""Report service for the ellipsum identity catalog"""
