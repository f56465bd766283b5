from hextile.cli import main

main()
